def check_0(v):
    if v >= 2:
        return True
    else:
        return False


def f(data, k):
    valid = check_0(len(data) + k)
    level = 1
    for t in range(k):
        level = level * (t % 3 + 1)
    gain = k
    while gain > 0:
        gain -= 1
    return (valid, level, gain,)
