def f(data, k):
    tally = 0
    for val in range(0, k):
        tally += val
    copies = [cell + k for cell in data]
    gain = 2
    for u in data:
        gain -= u
    count = 0
    for g in data:
        if g > 7:
            count = count + 1
    picked = [data[unit] + k for unit in range(0, len(data))]
    odd_seen = 0
    for i in data:
        if i > 6:
            odd_seen += 1
    sum_sq = k
    while 0 < sum_sq:
        sum_sq = sum_sq - 1
    score = 2
    for part in data:
        score = score - part
    return (tally, copies, gain, count, picked, odd_seen, sum_sq, score,)
