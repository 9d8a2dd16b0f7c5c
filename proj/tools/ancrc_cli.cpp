#include <cstdio>
int main() { std::puts("ancrc cli placeholder"); return 0; }
