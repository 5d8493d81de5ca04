#include <iostream>

#include "baire/serialize.hpp"

int main() {
  std::cout << "placeholder\n";
  return 0;
}
