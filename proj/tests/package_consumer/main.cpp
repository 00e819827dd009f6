#include <iostream>
#include "quadrint/chow.hpp"
int main() { std::cout << quadrint::intersection_numbers().deg_R << "\n"; }
