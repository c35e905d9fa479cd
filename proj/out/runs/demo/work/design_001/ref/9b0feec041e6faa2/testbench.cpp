#include <cstdio>

void vec_add(const int a[16], const int b[16], int out[16]);

int main() {
    int a[16], b[16], out[16];
    for (int i = 0; i < 16; ++i) {
        a[i] = i;
        b[i] = 100 - i;
    }
    vec_add(a, b, out);
    for (int i = 0; i < 16; ++i) {
        if (out[i] != 100) {
            printf("mismatch at %d: %d\n", i, out[i]);
            return 1;
        }
    }
    printf("vec_add ok\n");
    return 0;
}
