#include <iostream>

int main() {
    std::cout << "nilq\n";
    return 0;
}
