void mat_vec4(const int m[4][4], const int v[4], int out[4]) {
#pragma HLS ARRAY_PARTITION variable=m complete dim=2
#pragma HLS ARRAY_PARTITION variable=v complete
row_loop:
    for (int r = 0; r < 4; ++r) {
#pragma HLS PIPELINE II=1
        int acc = 0;
col_loop:
        for (int c = 0; c < 4; ++c) {
#pragma HLS UNROLL
            acc += m[r][c] * v[c];
        }
        out[r] = acc;
    }
}
