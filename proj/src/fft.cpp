#include "fkslab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace fks {
namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

// One c2c plan pair for a given (dim, N), with owned work buffers.
class PlanPair {
public:
    PlanPair(int dim, int n, std::size_t total) : total_(total) {
        in_ = fftw_alloc_complex(total);
        out_ = fftw_alloc_complex(total);
        if (!in_ || !out_) throw std::bad_alloc();
        int dims[3] = {n, n, n};
        std::lock_guard<std::mutex> lock(planner_mutex());
        fwd_ = fftw_plan_dft(dim, dims, in_, out_, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft(dim, dims, in_, out_, FFTW_BACKWARD, FFTW_ESTIMATE);
        if (!fwd_ || !bwd_) throw std::runtime_error("fft: plan creation failed");
    }
    ~PlanPair() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
        fftw_free(in_);
        fftw_free(out_);
    }
    PlanPair(const PlanPair&) = delete;
    PlanPair& operator=(const PlanPair&) = delete;

    fftw_complex* in() { return in_; }
    const fftw_complex* out() const { return out_; }
    void run_forward() { fftw_execute(fwd_); }
    void run_backward() { fftw_execute(bwd_); }
    std::size_t total() const { return total_; }

private:
    std::size_t total_;
    fftw_complex* in_;
    fftw_complex* out_;
    fftw_plan fwd_;
    fftw_plan bwd_;
};

PlanPair& plans_for(const Grid& g) {
    thread_local std::map<std::pair<int, int>, std::unique_ptr<PlanPair>> cache;
    auto key = std::make_pair(g.dim(), g.points_per_dim());
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::make_unique<PlanPair>(g.dim(), g.points_per_dim(), g.size())).first;
    }
    return *it->second;
}

}  // namespace

SpectralField to_spectral(const Field& f) {
    auto& pp = plans_for(f.grid());
    const auto& vals = f.values();
    for (std::size_t i = 0; i < vals.size(); ++i) {
        pp.in()[i][0] = vals[i];
        pp.in()[i][1] = 0.0;
    }
    pp.run_forward();
    SpectralField s(f.grid());
    const double scale = 1.0 / static_cast<double>(f.size());
    for (std::size_t i = 0; i < vals.size(); ++i)
        s[i] = {pp.out()[i][0] * scale, pp.out()[i][1] * scale};
    return s;
}

Field to_field(const SpectralField& s, double* imag_residual) {
    auto& pp = plans_for(s.grid());
    for (std::size_t i = 0; i < s.size(); ++i) {
        pp.in()[i][0] = s[i].real();
        pp.in()[i][1] = s[i].imag();
    }
    pp.run_backward();
    Field f(s.grid());
    double res = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        f[i] = pp.out()[i][0];
        res = std::max(res, std::abs(pp.out()[i][1]));
    }
    if (imag_residual) *imag_residual = res;
    return f;
}

std::vector<std::complex<double>> to_complex_values(const SpectralField& s) {
    auto& pp = plans_for(s.grid());
    for (std::size_t i = 0; i < s.size(); ++i) {
        pp.in()[i][0] = s[i].real();
        pp.in()[i][1] = s[i].imag();
    }
    pp.run_backward();
    std::vector<std::complex<double>> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = {pp.out()[i][0], pp.out()[i][1]};
    return out;
}

}  // namespace fks
