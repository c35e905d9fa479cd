#include <cstdio>

int gcd(int a, int b);

static int model(int a, int b) {
    while (b != 0) {
        int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int main() {
    struct { int a, b; } cases[] = {
        {0, 5}, {5, 0}, {12, 18}, {17, 13}, {1024, 768}, {270, 192}, {1, 1},
    };
    for (const auto& c : cases) {
        int got = gcd(c.a, c.b);
        int expected = model(c.a, c.b);
        if (got != expected) {
            printf("gcd(%d,%d) = %d, want %d\n", c.a, c.b, got, expected);
            return 1;
        }
    }
    printf("gcd ok\n");
    return 0;
}
