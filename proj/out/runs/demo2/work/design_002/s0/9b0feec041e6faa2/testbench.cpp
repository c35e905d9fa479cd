#include <cstdio>

int dot_product(const int a[32], const int b[32]);

int main() {
    int a[32], b[32];
    int expected = 0;
    for (int i = 0; i < 32; ++i) {
        a[i] = i + 1;
        b[i] = 2 * i - 3;
        expected += (i + 1) * (2 * i - 3);
    }
    int got = dot_product(a, b);
    if (got != expected) {
        printf("dot_product mismatch: %d != %d\n", got, expected);
        return 1;
    }
    printf("dot_product ok\n");
    return 0;
}
