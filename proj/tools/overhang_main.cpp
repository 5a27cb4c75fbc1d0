#include <iostream>

int main() {
    std::cout << "overhang cli placeholder\n";
    return 0;
}
