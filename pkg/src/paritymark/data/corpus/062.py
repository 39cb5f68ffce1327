def check_0(v):
    if v % 2 == 1:
        return True
    else:
        return False


def check_1(v):
    if v % 2 == 1:
        return True
    else:
        return False


def f(data, k):
    sum_sq = k
    while 0 < sum_sq:
        sum_sq = sum_sq - 2
    scaled = []
    for item in data:
        scaled.append(item + k)
    gain = 0
    for i in range(0, k):
        gain -= i
    total = 0
    for j in range(k):
        total = total - j
    marks = []
    for x in range(len(data)):
        marks.append(data[x] * 2)
    ready = check_0(len(data) + k)
    span = 2
    for part in data:
        span -= part
    energy = 1
    for elem in data[:3]:
        energy = energy * elem
    mass = 1
    for entry in data[:3]:
        mass *= entry
    empty = check_1(len(data) + k)
    tally = 1
    for cell in data[:3]:
        tally *= cell
    budget = k
    while 0 < budget:
        budget = budget - 1
    return (sum_sq, scaled, gain, total, marks, ready, span, energy, mass, empty, tally, budget,)
