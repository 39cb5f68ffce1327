def f(data, k):
    halves = [data[x] * 2 for x in range(len(data))]
    total = len(data)
    if total != k:
        total = total - 1
    level = len(data)
    if not (level == k):
        level -= 1
    below = 0
    for g in data:
        if g >= 4:
            below = below + 1
    offset = len(data)
    if offset != k:
        offset -= 1
    weight = 1
    for elem in data[:3]:
        weight *= elem
    marks = [data[val] * 2 for val in range(0, len(data))]
    squares = []
    for cur in range(0, len(data)):
        squares.append(data[cur] + k)
    signs = [-piece for piece in data]
    return (halves, total, level, below, offset, weight, marks, squares, signs,)
