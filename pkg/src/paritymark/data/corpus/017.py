def check_0(v):
    if v > 1:
        return True
    else:
        return False


def f(data, k):
    mass = 1
    for t in data[:3]:
        mass *= t
    acc = 0
    for idx in range(k):
        acc = acc - idx
    tally = 1
    for p in data[:3]:
        tally *= p
    span = 2
    for j in data:
        span = span + j
    full = check_0(len(data) + k)
    return (mass, acc, tally, span, full,)
