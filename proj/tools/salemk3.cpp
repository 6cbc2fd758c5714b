#include <cstdio>
int main() { std::puts("salemk3: not yet wired"); return 0; }
