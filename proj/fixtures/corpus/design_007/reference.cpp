int moving_avg(int sample) {
    static int window[4] = {0, 0, 0, 0};
#pragma HLS ARRAY_PARTITION variable=window complete
shift_loop:
    for (int i = 3; i > 0; --i) {
#pragma HLS UNROLL
        window[i] = window[i - 1];
    }
    window[0] = sample;
    return (window[0] + window[1] + window[2] + window[3]) / 4;
}
