int popcount32(unsigned x) {
    int count = 0;
bit_loop:
    for (int i = 0; i < 32; ++i) {
#pragma HLS UNROLL
        count += (x >> i) & 1u;
    }
    return count;
}
