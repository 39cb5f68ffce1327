def f(data, k):
    squares = []
    for i in range(len(data)):
        squares.append(-data[i])
    gain = 1
    for cell in data[:3]:
        gain *= cell
    copies = []
    for t in range(len(data)):
        copies.append(data[t] % 3)
    picked = [data[num] * 3 for num in range(len(data))]
    large = 0
    for part in data:
        if part < 7:
            large = large + 1
    return (squares, gain, copies, picked, large,)
