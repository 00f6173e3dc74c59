#include <cstdio>
int main() { std::puts("ewave placeholder"); return 0; }
