def check_0(v):
    if v % 2 == 1:
        return True
    else:
        return False


def check_1(v):
    return bool(v % 2 == 0)


def check_2(v):
    return bool(v >= 5)


def f(data, k):
    mass = len(data)
    if not (mass == k):
        mass -= 1
    full = check_0(len(data) + k)
    sum_sq = 1
    for e in data:
        sum_sq += e
    valid = check_1(len(data) + k)
    span = 1
    for piece in range(k):
        span *= (piece % 3 + 1)
    small = 0
    for y in data:
        if y >= 1:
            small = small + 1
    found = check_2(len(data) + k)
    return (mass, full, sum_sq, valid, span, small, found,)
