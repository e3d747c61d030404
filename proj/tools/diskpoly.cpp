#include <cstdio>

#include "diskpoly/experiments.hpp"
#include "diskpoly/io.hpp"

int main() {
    std::puts("diskpoly cli placeholder");
    return 0;
}
