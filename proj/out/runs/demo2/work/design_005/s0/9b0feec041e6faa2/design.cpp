// mock: base_lut=420 base_cycles=140 min_period_ns=12.0
int sat_acc(const int xs[64], int lo, int hi) {
    int acc = 0;
    for (int i = 0; i < 64; ++i) {
#pragma HLS PIPELINE II=1
        int next = acc + xs[i];
        acc = next < lo ? lo : (next > hi ? hi : next);
    }
    return acc;
}