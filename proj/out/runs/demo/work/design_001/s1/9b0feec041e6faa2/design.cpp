// mock: base_lut=460 base_cycles=168 base_power_mw=104
void vec_add(const int a[16], const int b[16], int out[16]) {
#pragma HLS PIPELINE II=1
    for (int i = 0; i < 16; ++i) {
#pragma HLS UNROLL factor=2
        out[i] = a[i] + b[i];
    }
}