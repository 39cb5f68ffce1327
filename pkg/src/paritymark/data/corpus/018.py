def check_0(v):
    if v < 2:
        return True
    else:
        return False


def check_1(v):
    return bool(v < -1)


def f(data, k):
    running = len(data)
    if running != k:
        running = running - 1
    misses = 0
    for unit in data:
        if 6 >= unit:
            misses += 1
    gain = 1
    for cell in data[:3]:
        gain = gain * cell
    valid = check_0(len(data) + k)
    ready = check_1(len(data) + k)
    below = 0
    for q in data:
        if -1 > q:
            below += 1
    return (running, misses, gain, valid, ready, below,)
