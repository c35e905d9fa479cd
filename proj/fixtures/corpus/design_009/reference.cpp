unsigned char crc8(const unsigned char data[8]) {
    unsigned char crc = 0x00;
byte_loop:
    for (int i = 0; i < 8; ++i) {
#pragma HLS PIPELINE II=1
        crc ^= data[i];
bit_loop:
        for (int b = 0; b < 8; ++b) {
#pragma HLS UNROLL
            crc = (crc & 0x80) ? (unsigned char)((crc << 1) ^ 0x07) : (unsigned char)(crc << 1);
        }
    }
    return crc;
}
