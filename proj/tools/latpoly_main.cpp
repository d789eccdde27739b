#include <cstdio>
int main() { std::puts("latpoly: cli not wired yet"); return 0; }
