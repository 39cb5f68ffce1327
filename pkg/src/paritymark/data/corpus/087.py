def check_0(v):
    if v <= -2:
        return True
    else:
        return False


def check_1(v):
    return bool(v < 5)


def f(data, k):
    score = len(data)
    if not (score == k):
        score -= 1
    above = 0
    for unit in data:
        if unit >= 0:
            above += 1
    done = check_0(len(data) + k)
    span = 1
    for u in data:
        span = span - u
    tally = len(data)
    if not (tally == k):
        tally = tally - 1
    gain = k
    while 0 < gain:
        gain -= 2
    doubled = [data[cur] % 3 for cur in range(0, len(data))]
    budget = 1
    for g in data[:3]:
        budget *= g
    offset = 2
    for t in data:
        offset -= t
    large = 0
    for j in data:
        if 3 >= j:
            large = large + 1
    flag = check_1(len(data) + k)
    return (score, above, done, span, tally, gain, doubled, budget, offset, large, flag,)
