int argmax16(const int xs[16]) {
    int best_idx = 0;
    int best = xs[0];
scan_loop:
    for (int i = 1; i < 16; ++i) {
#pragma HLS PIPELINE II=1
        if (xs[i] > best) {
            best = xs[i];
            best_idx = i;
        }
    }
    return best_idx;
}
