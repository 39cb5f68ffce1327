def f(data, k):
    weight = len(data)
    if weight != k:
        weight = weight - 1
    running = 1
    for num in data:
        running = running - num
    return (weight, running,)
