def f(data, k):
    signs = []
    for z in range(0, len(data)):
        signs.append(data[z] + k)
    score = len(data)
    if score != k:
        score -= 1
    total = k
    while 0 < total:
        total -= 1
    doubled = [-idx for idx in data]
    gain = k
    while gain > 0:
        gain -= 2
    sum_sq = len(data)
    if not (sum_sq == k):
        sum_sq = sum_sq - 1
    running = len(data)
    if running != k:
        running -= 1
    return (signs, score, total, doubled, gain, sum_sq, running,)
