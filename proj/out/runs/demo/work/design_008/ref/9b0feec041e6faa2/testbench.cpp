#include <cstdio>

int argmax16(const int xs[16]);

int main() {
    int xs[16];
    for (int i = 0; i < 16; ++i) xs[i] = (i * 5) % 11;
    xs[9] = 100;
    if (argmax16(xs) != 9) {
        printf("argmax16 failed unique-max case\n");
        return 1;
    }
    for (int i = 0; i < 16; ++i) xs[i] = 7;
    if (argmax16(xs) != 0) {
        printf("argmax16 failed tie case\n");
        return 1;
    }
    printf("argmax16 ok\n");
    return 0;
}
