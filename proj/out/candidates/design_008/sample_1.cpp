// mock: base_lut=310 base_cycles=52
int argmax16(const int xs[16]) {
    int best_idx = 0;
    for (int i = 1; i < 16; ++i) {
#pragma HLS PIPELINE II=1
        best_idx = xs[i] > xs[best_idx] ? i : best_idx;
    }
    return best_idx;
}