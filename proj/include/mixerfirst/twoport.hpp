#pragma once

// Chain-parameter (ABCD) two-port algebra over complex impedances, plus the
// frequency-grid and termination types used across the library. Everything
// here is single-frequency and referentially transparent.

#include <algorithm>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "mixerfirst/numeric.hpp"

namespace mfr {

/// Strictly increasing list of positive frequencies in Hz.
class FrequencyGrid {
  public:
    explicit FrequencyGrid(std::vector<double> points_hz)
        : points_(std::move(points_hz)) {
        if (points_.empty())
            throw std::invalid_argument("FrequencyGrid: empty grid");
        double prev = 0.0;
        for (double f : points_) {
            if (!(f > 0.0))
                throw std::invalid_argument(
                    "FrequencyGrid: all points must be > 0 Hz");
            if (!(f > prev))
                throw std::invalid_argument(
                    "FrequencyGrid: points must be strictly increasing");
            prev = f;
        }
    }

    static FrequencyGrid linspace(double f_start_hz, double f_stop_hz,
                                  std::size_t n) {
        if (n == 0) throw std::invalid_argument("FrequencyGrid: zero points");
        std::vector<double> p(n);
        if (n == 1) {
            p[0] = f_start_hz;
        } else {
            const double step = (f_stop_hz - f_start_hz) / double(n - 1);
            for (std::size_t i = 0; i < n; ++i)
                p[i] = f_start_hz + step * double(i);
        }
        return FrequencyGrid(std::move(p));
    }

    const std::vector<double>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    double operator[](std::size_t i) const { return points_[i]; }

  private:
    std::vector<double> points_;
};

/// Passive termination (Re >= 0).
struct Termination {
    cplx z;

    explicit Termination(cplx impedance) : z(impedance) {
        if (z.real() < 0.0)
            throw std::invalid_argument(
                "Termination: passive terminations require Re{Z} >= 0");
    }
};

/// One-frequency chain matrix. Cascade composes left to right: the left port
/// of `lhs * rhs` faces the source, the right port of `rhs` faces the load.
class TwoPort {
  public:
    TwoPort() : a_(1.0), b_(0.0), c_(0.0), d_(1.0) {}
    TwoPort(cplx a, cplx b, cplx c, cplx d) : a_(a), b_(b), c_(c), d_(d) {}

    cplx a() const { return a_; }
    cplx b() const { return b_; }
    cplx c() const { return c_; }
    cplx d() const { return d_; }

    cplx determinant() const { return a_ * d_ - b_ * c_; }

    TwoPort operator*(const TwoPort& o) const {
        return TwoPort(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                       c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
    }

    /// Impedance seen at the input port with the output terminated.
    cplx input_impedance(const Termination& load) const {
        const cplx den = c_ * load.z + d_;
        if (std::abs(den) < 1e-18)
            throw std::runtime_error("input_impedance: open-circuit resonance");
        return (a_ * load.z + b_) / den;
    }

    /// V_load / V_in with the output terminated in `load`.
    cplx voltage_transfer(const Termination& load) const {
        const cplx den = a_ * load.z + b_;
        if (std::abs(den) < 1e-18)
            throw std::runtime_error("voltage_transfer: series resonance");
        return load.z / den;
    }

    /// Transducer power gain from a source (EMF behind z_source) into `load`.
    double transducer_gain(cplx z_source, const Termination& load) const {
        const cplx den =
            a_ * load.z + b_ + z_source * (c_ * load.z + d_);
        const double p_load =
            4.0 * z_source.real() * load.z.real() / std::norm(den);
        return p_load;
    }

  private:
    cplx a_, b_, c_, d_;
};

inline TwoPort identity_two_port() { return TwoPort(); }

inline TwoPort series_element(cplx z) {
    return TwoPort(1.0, z, 0.0, 1.0);
}

inline TwoPort shunt_element(cplx y) {
    return TwoPort(1.0, 0.0, y, 1.0);
}

inline TwoPort series_resistor(double r) { return series_element(cplx(r, 0.0)); }
inline TwoPort shunt_resistor(double r) {
    return shunt_element(cplx(1.0 / r, 0.0));
}

inline TwoPort series_inductor(double l, double f, double q = inf) {
    const double w = two_pi * f;
    const double r = std::isinf(q) ? 0.0 : w * l / q;
    return series_element(cplx(r, w * l));
}

inline TwoPort series_capacitor(double c, double f) {
    const double w = two_pi * f;
    return series_element(cplx(0.0, -1.0 / (w * c)));
}

inline TwoPort shunt_capacitor(double c, double f) {
    const double w = two_pi * f;
    return shunt_element(cplx(0.0, w * c));
}

inline TwoPort shunt_inductor(double l, double f) {
    const double w = two_pi * f;
    return shunt_element(cplx(0.0, -1.0 / (w * l)));
}

/// Transmission line segment in the hyperbolic telegrapher form.
///
/// `theta` is the electrical length in radians at the evaluation frequency;
/// loss enters through a flat attenuation in dB/mm over `length_mm`.
inline TwoPort tline(double z0, double theta, double loss_db_per_mm = 0.0,
                     double length_mm = 0.0) {
    if (!(z0 > 0.0))
        throw std::invalid_argument("tline: characteristic impedance must be > 0");
    if (loss_db_per_mm < 0.0)
        throw std::invalid_argument("tline: loss must be >= 0");
    const double alpha_l = loss_db_per_mm * length_mm / (20.0 / std::log(10.0));
    const cplx gl(alpha_l, theta);
    const cplx ch = std::cosh(gl);
    const cplx sh = std::sinh(gl);
    return TwoPort(ch, z0 * sh, sh / z0, ch);
}

/// Line designed as quarter wave at `f_design`, evaluated at `f`.
inline TwoPort tline_quarter_wave(double z0, double f_design, double f,
                                  double loss_db_per_mm = 0.0,
                                  double length_mm = 0.0) {
    return tline(z0, 0.5 * pi * f / f_design, loss_db_per_mm, length_mm);
}

inline TwoPort cascade(std::span<const TwoPort> ports) {
    TwoPort acc;
    for (const auto& p : ports) acc = acc * p;
    return acc;
}

inline TwoPort cascade(std::initializer_list<TwoPort> ports) {
    TwoPort acc;
    for (const auto& p : ports) acc = acc * p;
    return acc;
}

inline cplx input_impedance(const TwoPort& port, const Termination& load) {
    return port.input_impedance(load);
}

/// Reflection coefficient of z_in against a real reference impedance.
inline cplx s11(cplx z_in, double z_ref) {
    if (!(z_ref > 0.0))
        throw std::invalid_argument("s11: reference impedance must be > 0");
    if (std::isinf(z_in.real()) || std::isinf(z_in.imag())) return cplx(1.0, 0.0);
    return (z_in - z_ref) / (z_in + z_ref);
}

/// Physical quarter-wave length in mm for a given effective permittivity.
inline double quarter_wave_length_mm(double f_design, double eps_eff = 4.0) {
    const double c0 = 299792458.0;
    return 1e3 * c0 / (4.0 * f_design * std::sqrt(eps_eff));
}

}  // namespace mfr
