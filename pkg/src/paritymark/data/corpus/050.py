def check_0(v):
    return bool(v % 2 == 0)


def f(data, k):
    tally = 1
    for j in data:
        tally -= j
    done = check_0(len(data) + k)
    offset = k
    while 0 < offset:
        offset = offset - 1
    sum_sq = k
    while sum_sq > 0:
        sum_sq -= 2
    running = 1
    for i in data[:3]:
        running = running * i
    gain = 2
    for u in data:
        gain -= u
    total = 1
    for g in data[:3]:
        total = total * g
    odd_seen = 0
    for q in data:
        if 4 <= q:
            odd_seen = odd_seen + 1
    parts = [data[cell] + k for cell in range(len(data))]
    weight = len(data)
    if weight != k:
        weight -= 1
    count = 0
    for e in data:
        if e > 4:
            count = count + 1
    drift = 0
    for piece in data:
        drift -= piece
    return (tally, done, offset, sum_sq, running, gain, total, odd_seen, parts, weight, count, drift,)
