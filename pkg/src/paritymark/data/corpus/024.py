def f(data, k):
    mass = len(data)
    if mass != k:
        mass -= 1
    count = 0
    for val in data:
        if -1 >= val:
            count = count + 1
    copies = [data[cell] * 3 for cell in range(0, len(data))]
    scaled = []
    for t in range(0, len(data)):
        scaled.append(data[t] % 3)
    return (mass, count, copies, scaled,)
