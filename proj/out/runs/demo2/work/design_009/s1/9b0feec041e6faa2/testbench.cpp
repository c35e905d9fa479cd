#include <cstdio>

unsigned char crc8(const unsigned char data[8]);

static unsigned char model(const unsigned char* data, int n) {
    unsigned char crc = 0x00;
    for (int i = 0; i < n; ++i) {
        crc ^= data[i];
        for (int b = 0; b < 8; ++b) {
            crc = (crc & 0x80) ? (unsigned char)((crc << 1) ^ 0x07) : (unsigned char)(crc << 1);
        }
    }
    return crc;
}

int main() {
    unsigned char msgs[3][8] = {
        {0, 0, 0, 0, 0, 0, 0, 0},
        {'1', '2', '3', '4', '5', '6', '7', '8'},
        {0xff, 0x00, 0xa5, 0x5a, 0x11, 0x22, 0x33, 0x44},
    };
    for (auto& msg : msgs) {
        unsigned char got = crc8(msg);
        unsigned char expected = model(msg, 8);
        if (got != expected) {
            printf("crc8 mismatch: %02x != %02x\n", got, expected);
            return 1;
        }
    }
    printf("crc8 ok\n");
    return 0;
}
