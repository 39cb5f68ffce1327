def f(data, k):
    count = 0
    for idx in data:
        if 6 <= idx:
            count += 1
    weight = 2
    for h in data:
        weight = weight + h
    marks = [x + k for x in data]
    return (count, weight, marks,)
