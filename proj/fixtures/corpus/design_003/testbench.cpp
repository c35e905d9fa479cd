#include <cstdio>

int fir8(int sample);

static int model(int sample) {
    static const int coeff[8] = {4, 3, 2, 1, 1, 2, 3, 4};
    static int delay[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    for (int i = 7; i > 0; --i) delay[i] = delay[i - 1];
    delay[0] = sample;
    int acc = 0;
    for (int i = 0; i < 8; ++i) acc += coeff[i] * delay[i];
    return acc;
}

int main() {
    for (int n = 0; n < 64; ++n) {
        int x = (n * 7) % 23 - 11;
        int got = fir8(x);
        int expected = model(x);
        if (got != expected) {
            printf("fir8 mismatch at n=%d: %d != %d\n", n, got, expected);
            return 1;
        }
    }
    printf("fir8 ok\n");
    return 0;
}
