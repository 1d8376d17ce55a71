def gaussian_blur(pixels, width, height, radius):
    kernel = build_gaussian_kernel(radius)
    blurred = convolve_rows(pixels, width, height, kernel)
    return convolve_columns(blurred, width, height, kernel)


def build_gaussian_kernel(radius):
    import math

    sigma = max(radius / 2.0, 1.0)
    kernel = []
    for offset in range(-radius, radius + 1):
        weight = math.exp(-(offset * offset) / (2.0 * sigma * sigma))
        kernel.append(weight)
    total = sum(kernel)
    return [w / total for w in kernel]


def convolve_rows(pixels, width, height, kernel):
    half = len(kernel) // 2
    output = list(pixels)
    for y in range(height):
        for x in range(width):
            acc = 0.0
            for k, weight in enumerate(kernel):
                sample_x = min(max(x + k - half, 0), width - 1)
                acc += pixels[y * width + sample_x] * weight
            output[y * width + x] = acc
    return output


def convolve_columns(pixels, width, height, kernel):
    half = len(kernel) // 2
    output = list(pixels)
    for y in range(height):
        for x in range(width):
            acc = 0.0
            for k, weight in enumerate(kernel):
                sample_y = min(max(y + k - half, 0), height - 1)
                acc += pixels[sample_y * width + x] * weight
            output[y * width + x] = acc
    return output
