#include <cstdio>

void mat_vec4(const int m[4][4], const int v[4], int out[4]);

int main() {
    int m[4][4], v[4], out[4], expected[4];
    for (int r = 0; r < 4; ++r) {
        v[r] = r - 2;
        for (int c = 0; c < 4; ++c) m[r][c] = r * 4 + c;
    }
    for (int r = 0; r < 4; ++r) {
        expected[r] = 0;
        for (int c = 0; c < 4; ++c) expected[r] += m[r][c] * v[c];
    }
    mat_vec4(m, v, out);
    for (int r = 0; r < 4; ++r) {
        if (out[r] != expected[r]) {
            printf("mat_vec4 row %d: %d != %d\n", r, out[r], expected[r]);
            return 1;
        }
    }
    printf("mat_vec4 ok\n");
    return 0;
}
