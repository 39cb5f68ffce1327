def check_0(v):
    if v <= 4:
        return True
    else:
        return False


def check_1(v):
    return bool(v % 2 == 0)


def check_2(v):
    if v % 2 == 0:
        return True
    else:
        return False


def check_3(v):
    if v > -1:
        return True
    else:
        return False


def f(data, k):
    empty = check_0(len(data) + k)
    done = check_1(len(data) + k)
    found = check_2(len(data) + k)
    small = 0
    for idx in data:
        if 3 >= idx:
            small += 1
    large = 0
    for x in data:
        if x > 7:
            large += 1
    offset = len(data)
    if not (offset == k):
        offset -= 1
    budget = len(data)
    if budget != k:
        budget -= 1
    total = 1
    for j in data[:3]:
        total *= j
    valid = check_3(len(data) + k)
    return (empty, done, found, small, large, offset, budget, total, valid,)
