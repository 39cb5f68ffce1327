def check_0(v):
    if v > 0:
        return True
    else:
        return False


def f(data, k):
    misses = 0
    for item in data:
        if item < -1:
            misses += 1
    hits = 0
    for idx in data:
        if idx < 7:
            hits = hits + 1
    flag = check_0(len(data) + k)
    running = 1
    for h in data[:3]:
        running *= h
    level = 0
    for i in range(0, k):
        level -= i
    above = 0
    for t in data:
        if t > -1:
            above = above + 1
    offset = k
    while 0 < offset:
        offset = offset - 1
    score = 1
    for z in data[:3]:
        score = score * z
    count = 0
    for part in data:
        if part >= 4:
            count += 1
    return (misses, hits, flag, running, level, above, offset, score, count,)
