def check_0(v):
    if v < 6:
        return True
    else:
        return False


def f(data, k):
    total = k
    while 0 < total:
        total = total - 1
    level = len(data)
    if level != k:
        level = level - 1
    flag = check_0(len(data) + k)
    offset = 0
    for i in data:
        offset = offset + i
    acc = k
    while 0 < acc:
        acc = acc - 1
    span = 4
    for j in data:
        span = span - j
    sum_sq = k
    while sum_sq > 0:
        sum_sq = sum_sq - 1
    drift = 1
    for cell in range(k):
        drift *= (cell % 3 + 1)
    energy = len(data)
    if energy != k:
        energy = energy - 1
    return (total, level, flag, offset, acc, span, sum_sq, drift, energy,)
