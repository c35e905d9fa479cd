int fir8(int sample) {
    static const int coeff[8] = {4, 3, 2, 1, 1, 2, 3, 4};
    static int delay[8] = {0, 0, 0, 0, 0, 0, 0, 0};
#pragma HLS ARRAY_PARTITION variable=delay complete

shift_loop:
    for (int i = 7; i > 0; --i) {
#pragma HLS UNROLL
        delay[i] = delay[i - 1];
    }
    delay[0] = sample;

    int acc = 0;
mac_loop:
    for (int i = 0; i < 8; ++i) {
#pragma HLS PIPELINE II=1
        acc += coeff[i] * delay[i];
    }
    return acc;
}
