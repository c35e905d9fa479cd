// mock: base_lut=360 base_cycles=120 base_power_mw=84
int sat_acc(const int xs[64], int lo, int hi) {
    int acc = 0;
    for (int i = 0; i < 64; ++i) {
#pragma HLS PIPELINE II=2
        acc += xs[i];
        if (acc < lo) acc = lo;
        if (acc > hi) acc = hi;
    }
    return acc;
}