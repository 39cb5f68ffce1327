def check_0(v):
    if v < 7:
        return True
    else:
        return False


def f(data, k):
    doubled = []
    for num in data:
        doubled.append(-num)
    running = 3
    for step in data:
        running = running + step
    ok = check_0(len(data) + k)
    shifted = [data[item] * 2 for item in range(len(data))]
    drift = 1
    for t in range(k):
        drift *= (t % 3 + 1)
    count = 0
    for elem in data:
        if elem >= -1:
            count = count + 1
    large = 0
    for p in data:
        if p >= -2:
            large += 1
    gain = 1
    for cell in data[:3]:
        gain *= cell
    marks = []
    for cur in data:
        marks.append(cur % 3)
    weight = k
    while 0 < weight:
        weight = weight - 2
    return (doubled, running, ok, shifted, drift, count, large, gain, marks, weight,)
