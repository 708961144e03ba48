from OPONoise.model import NoisePoint


class NoisePointBuilder:

    def __init__(self):
        self._freq_hz = 0.0
        self._omega = 0.0
        self._g_x = 1.0
        self._g_y = 1.0
        self._v_ind_x = 1.0
        self._v_ind_y = 1.0
        self._errors = (0.0, 0.0, 0.0, 0.0)

    def with_freq(self, freq_hz: float, cavity_fwhm_hz: float = 50e6):
        self._freq_hz = freq_hz
        self._omega = freq_hz / (cavity_fwhm_hz / 2.0)
        return self

    def with_g(self, g_x: float, g_y: float):
        self._g_x = g_x
        self._g_y = g_y
        return self

    def with_v_ind(self, v_ind_x: float, v_ind_y: float = None):
        self._v_ind_x = v_ind_x
        self._v_ind_y = v_ind_x if v_ind_y is None else v_ind_y
        return self

    def with_errors(self, err_g_x: float, err_g_y: float, err_v_ind_x: float = 0.0, err_v_ind_y: float = 0.0):
        self._errors = (err_g_x, err_g_y, err_v_ind_x, err_v_ind_y)
        return self

    def build(self) -> NoisePoint:
        return NoisePoint(self._freq_hz, self._omega, self._g_x, self._g_y, self._v_ind_x, self._v_ind_y,
                          *self._errors)
