#include "bdbm/quadrature.hpp"

#include <cmath>
#include <vector>

#include "bdbm/errors.hpp"

namespace bdbm {

namespace {

// 15-point Kronrod nodes/weights on [-1,1] plus the embedded 7-point Gauss rule.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * xgk[i]);
        fv[14 - i] = f(c + h * xgk[i]);
    }
    fv[7] = f(c);
    double kron = wgk[7] * fv[7];
    double gauss = wg[3] * fv[7];
    for (int i = 0; i < 7; ++i) kron += wgk[i] * (fv[i] + fv[14 - i]);
    for (int i = 0; i < 3; ++i) gauss += wg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    Panel p;
    p.a = a;
    p.b = b;
    p.value = kron * h;
    const double diff = std::abs((kron - gauss) * h);
    p.error = diff * std::sqrt(diff);  // standard sharpened estimate
    if (p.error > diff) p.error = diff;
    return p;
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                     double abs_tol) {
    if (a == b) return {0.0, 0.0};
    std::vector<Panel> heap;
    heap.push_back(gk15(f, a, b));
    double total = heap[0].value, err = heap[0].error;
    const int max_panels = 4000;
    while (true) {
        const double tol = std::max(abs_tol, rel_tol * std::abs(total));
        if (err <= tol || err < 1e-300) break;
        if (static_cast<int>(heap.size()) >= max_panels)
            fail(Errc::QuadratureNotConverged, "panel budget exhausted");
        // split the worst panel
        std::size_t worst = 0;
        for (std::size_t i = 1; i < heap.size(); ++i)
            if (heap[i].error > heap[worst].error) worst = i;
        const Panel p = heap[worst];
        const double mid = 0.5 * (p.a + p.b);
        if (mid == p.a || mid == p.b) break;  // interval at rounding resolution
        Panel l = gk15(f, p.a, mid), r = gk15(f, mid, p.b);
        total += l.value + r.value - p.value;
        err += l.error + r.error - p.error;
        heap[worst] = l;
        heap.push_back(r);
    }
    return {total, err};
}

QuadResult integrate_semi_inf(const std::function<double(double)>& f, double a, double decay,
                              double rel_tol, double abs_tol) {
    if (!(decay > 0.0)) fail(Errc::QuadratureNotConverged, "decay rate must be positive");
    const double block = 8.0 / decay;
    QuadResult total{0.0, 0.0};
    double lo = a;
    for (int k = 0; k < 200; ++k) {
        QuadResult part = integrate(f, lo, lo + block, rel_tol, abs_tol);
        total.value += part.value;
        total.error += part.error;
        lo += block;
        const double tol = std::max(abs_tol, rel_tol * std::abs(total.value));
        if (k >= 1 && std::abs(part.value) <= 0.25 * tol) return total;
    }
    fail(Errc::QuadratureNotConverged, "semi-infinite tail did not settle");
}

}  // namespace bdbm
