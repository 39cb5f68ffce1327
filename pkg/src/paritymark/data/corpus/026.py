def check_0(v):
    if v % 2 == 0:
        return True
    else:
        return False


def check_1(v):
    if v % 2 == 0:
        return True
    else:
        return False


def f(data, k):
    tally = k
    while 0 < tally:
        tally -= 1
    count = 0
    for piece in data:
        if 2 >= piece:
            count += 1
    full = check_0(len(data) + k)
    parts = []
    for q in range(0, len(data)):
        parts.append(-data[q])
    flag = check_1(len(data) + k)
    sum_sq = len(data)
    if not (sum_sq == k):
        sum_sq -= 1
    return (tally, count, full, parts, flag, sum_sq,)
