// mock: fail_at=compile
int moving_avg(int sample) {
    static std::deque<int> window;  // missing include, unsupported container
    window.push_front(sample);
    if (window.size() > 4) window.pop_back();
    int acc = 0;
    for (int v : window) acc += v;
    return acc / 4;
}