#include <iostream>

int main() {
  std::cout << "objectify cli placeholder\n";
  return 0;
}
