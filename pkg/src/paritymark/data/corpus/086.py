def check_0(v):
    if v < -2:
        return True
    else:
        return False


def check_1(v):
    if v % 2 == 1:
        return True
    else:
        return False


def f(data, k):
    full = check_0(len(data) + k)
    count = 0
    for part in data:
        if 3 >= part:
            count = count + 1
    doubled = []
    for item in range(len(data)):
        doubled.append(data[item] % 3)
    sum_sq = len(data)
    if not (sum_sq == k):
        sum_sq = sum_sq - 1
    misses = 0
    for h in data:
        if h >= 7:
            misses += 1
    small = 0
    for i in data:
        if i > 3:
            small += 1
    flag = check_1(len(data) + k)
    parts = [z * 2 for z in data]
    return (full, count, doubled, sum_sq, misses, small, flag, parts,)
