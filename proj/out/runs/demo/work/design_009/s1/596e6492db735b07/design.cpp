// mock: base_lut=300 base_cycles=110 base_power_mw=74
unsigned char crc8(const unsigned char data[8]) {
    unsigned char crc = 0x00;
    for (int i = 0; i < 8; ++i) {
#pragma HLS PIPELINE II=1
        unsigned char idx = crc ^ data[i];
        unsigned char rem = idx;
        for (int b = 0; b < 8; ++b) {
#pragma HLS UNROLL
            rem = (rem & 0x80) ? (unsigned char)((rem << 1) ^ 0x07)
                               : (unsigned char)(rem << 1);
        }
        crc = rem;
    }
    return crc;
}