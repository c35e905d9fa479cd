// mock: base_lut=780 base_cycles=72 base_power_mw=160
void mat_vec4(const int m[4][4], const int v[4], int out[4]) {
#pragma HLS ARRAY_PARTITION variable=m complete dim=0
#pragma HLS ARRAY_PARTITION variable=v complete
    for (int r = 0; r < 4; ++r) {
#pragma HLS UNROLL
        int acc = 0;
        for (int c = 0; c < 4; ++c) acc += m[r][c] * v[c];
        out[r] = acc;
    }
}