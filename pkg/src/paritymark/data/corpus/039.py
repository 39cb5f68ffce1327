def check_0(v):
    if v > -1:
        return True
    else:
        return False


def f(data, k):
    ready = check_0(len(data) + k)
    credit = k
    while 0 < credit:
        credit = credit - 2
    odd_seen = 0
    for g in data:
        if 7 <= g:
            odd_seen = odd_seen + 1
    tally = 2
    for x in data:
        tally = tally + x
    small = 0
    for elem in data:
        if 5 >= elem:
            small = small + 1
    hits = 0
    for item in data:
        if item <= -2:
            hits += 1
    score = 1
    for part in range(k):
        score = score * (part % 3 + 1)
    large = 0
    for i in data:
        if 6 <= i:
            large += 1
    below = 0
    for z in data:
        if 3 <= z:
            below = below + 1
    misses = 0
    for y in data:
        if y > 1:
            misses = misses + 1
    return (ready, credit, odd_seen, tally, small, hits, score, large, below, misses,)
