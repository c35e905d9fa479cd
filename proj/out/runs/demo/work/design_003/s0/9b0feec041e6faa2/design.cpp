// mock: fail_at=csim
int fir8(int sample) {
    static const int coeff[8] = {4, 3, 2, 1, 1, 2, 3, 4};
    static int delay[8];
    // shift direction is wrong: overwrites the line with stale data
    for (int i = 0; i < 7; ++i) {
#pragma HLS UNROLL
        delay[i] = delay[i + 1];
    }
    delay[7] = sample;
    int acc = 0;
    for (int i = 0; i < 8; ++i) acc += coeff[i] * delay[i];
    return acc;
}