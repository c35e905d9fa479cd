#include <cstdio>

int popcount32(unsigned x);

int main() {
    struct { unsigned x; int expected; } cases[] = {
        {0u, 0}, {1u, 1}, {0xffffffffu, 32}, {0x80000001u, 2}, {0x0f0f0f0fu, 16},
    };
    for (const auto& c : cases) {
        int got = popcount32(c.x);
        if (got != c.expected) {
            printf("popcount32(%#x) = %d, want %d\n", c.x, got, c.expected);
            return 1;
        }
    }
    printf("popcount32 ok\n");
    return 0;
}
