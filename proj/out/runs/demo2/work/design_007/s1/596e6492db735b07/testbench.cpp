#include <cstdio>

int moving_avg(int sample);

int main() {
    int window[4] = {0, 0, 0, 0};
    for (int n = 0; n < 32; ++n) {
        int x = (n * 13) % 41 - 17;
        for (int i = 3; i > 0; --i) window[i] = window[i - 1];
        window[0] = x;
        int expected = (window[0] + window[1] + window[2] + window[3]) / 4;
        int got = moving_avg(x);
        if (got != expected) {
            printf("moving_avg mismatch at n=%d: %d != %d\n", n, got, expected);
            return 1;
        }
    }
    printf("moving_avg ok\n");
    return 0;
}
