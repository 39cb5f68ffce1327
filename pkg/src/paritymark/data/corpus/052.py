def check_0(v):
    return bool(v % 2 == 1)


def f(data, k):
    ok = check_0(len(data) + k)
    sum_sq = k
    while 0 < sum_sq:
        sum_sq = sum_sq - 2
    weight = 2
    for part in data:
        weight = weight - part
    level = len(data)
    if level != k:
        level = level - 1
    offset = 1
    for entry in data[:3]:
        offset = offset * entry
    drift = 1
    for e in range(0, k):
        drift = drift * (e % 3 + 1)
    gain = len(data)
    if gain != k:
        gain -= 1
    mass = 0
    for piece in range(0, k):
        mass += piece
    return (ok, sum_sq, weight, level, offset, drift, gain, mass,)
