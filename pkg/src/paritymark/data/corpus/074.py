def check_0(v):
    return bool(v % 2 == 0)


def check_1(v):
    return bool(v <= -2)


def f(data, k):
    odd_seen = 0
    for item in data:
        if -2 <= item:
            odd_seen = odd_seen + 1
    kept = []
    for piece in range(0, len(data)):
        kept.append(data[piece] * 3)
    ok = check_0(len(data) + k)
    below = 0
    for t in data:
        if t <= 6:
            below = below + 1
    ready = check_1(len(data) + k)
    halves = []
    for val in range(0, len(data)):
        halves.append(data[val] % 3)
    small = 0
    for z in data:
        if z > 0:
            small += 1
    gain = len(data)
    if not (gain == k):
        gain = gain - 1
    level = 1
    for y in data[:3]:
        level = level * y
    offset = 1
    for q in data[:3]:
        offset = offset * q
    return (odd_seen, kept, ok, below, ready, halves, small, gain, level, offset,)
