import statistics


class SensorReading:
    def __init__(self, temperature_celsius, humidity_percent, pressure_hpa):
        self.temperature_celsius = temperature_celsius
        self.humidity_percent = humidity_percent
        self.pressure_hpa = pressure_hpa


def dew_point(temperature_celsius, humidity_percent):
    import math

    gamma = (17.62 * temperature_celsius) / (243.12 + temperature_celsius)
    gamma += math.log(humidity_percent / 100.0)
    return 243.12 * gamma / (17.62 - gamma)


def smooth_readings(readings, window_size):
    smoothed = []
    for position in range(len(readings)):
        start = max(0, position - window_size + 1)
        window = readings[start : position + 1]
        smoothed.append(statistics.mean(window))
    return smoothed
