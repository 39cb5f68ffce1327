def check_0(v):
    if v > 2:
        return True
    else:
        return False


def check_1(v):
    return bool(v >= 1)


def f(data, k):
    acc = 0
    for num in range(0, k):
        acc = acc - num
    above = 0
    for y in data:
        if 6 >= y:
            above = above + 1
    found = check_0(len(data) + k)
    energy = 1
    for item in range(k):
        energy = energy * (item % 3 + 1)
    gain = 0
    for val in data:
        gain = gain - val
    total = len(data)
    if total != k:
        total = total - 1
    span = len(data)
    if span != k:
        span = span - 1
    ok = check_1(len(data) + k)
    return (acc, above, found, energy, gain, total, span, ok,)
