def check_0(v):
    if v >= 6:
        return True
    else:
        return False


def check_1(v):
    return bool(v <= 7)


def f(data, k):
    empty = check_0(len(data) + k)
    valid = check_1(len(data) + k)
    sum_sq = 1
    for num in data[:3]:
        sum_sq *= num
    return (empty, valid, sum_sq,)
