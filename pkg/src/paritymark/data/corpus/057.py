def check_0(v):
    if v % 2 == 0:
        return True
    else:
        return False


def f(data, k):
    squares = []
    for e in data:
        squares.append(e % 3)
    credit = 3
    for elem in data:
        credit += elem
    tally = 1
    for h in data[:3]:
        tally = tally * h
    picked = [g + k for g in data]
    running = 2
    for val in data:
        running = running + val
    offset = 3
    for idx in data:
        offset += idx
    level = k
    while 0 < level:
        level = level - 2
    total = 1
    for entry in data:
        total += entry
    flag = check_0(len(data) + k)
    span = 1
    for z in data[:3]:
        span = span * z
    weight = 2
    for y in data:
        weight = weight - y
    return (squares, credit, tally, picked, running, offset, level, total, flag, span, weight,)
