def f(data, k):
    e = len(data) + 4
    y = len(data) + 3
    x = len(data) + 0
    part = len(data) + 0
    return (e, y, x, part,)
