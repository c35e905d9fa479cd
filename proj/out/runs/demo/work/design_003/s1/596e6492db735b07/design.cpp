// mock: base_lut=600 base_ff=420 base_cycles=88 base_power_mw=150
int fir8(int sample) {
    static const int coeff[8] = {4, 3, 2, 1, 1, 2, 3, 4};
    static int delay[8] = {0};
#pragma HLS ARRAY_PARTITION variable=delay complete
    for (int i = 7; i > 0; --i) {
#pragma HLS UNROLL
        delay[i] = delay[i - 1];
    }
    delay[0] = sample;
    int acc = 0;
    for (int i = 0; i < 8; ++i) {
#pragma HLS PIPELINE II=1
        acc += coeff[i] * delay[i];
    }
    return acc;
}