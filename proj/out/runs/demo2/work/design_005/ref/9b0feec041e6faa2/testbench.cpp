#include <cstdio>

int sat_acc(const int xs[64], int lo, int hi);

int main() {
    int xs[64];
    for (int i = 0; i < 64; ++i) xs[i] = (i % 2 == 0) ? 50 : -20;

    int expected = 0;
    for (int i = 0; i < 64; ++i) {
        expected += xs[i];
        if (expected < -100) expected = -100;
        if (expected > 300) expected = 300;
    }
    int got = sat_acc(xs, -100, 300);
    if (got != expected) {
        printf("sat_acc mismatch: %d != %d\n", got, expected);
        return 1;
    }
    printf("sat_acc ok\n");
    return 0;
}
