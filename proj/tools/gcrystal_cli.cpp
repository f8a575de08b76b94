#include "gcrystal/json_io.hpp"
int main() { return 0; }
