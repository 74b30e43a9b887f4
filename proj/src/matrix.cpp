#include "matvar/matrix.hpp"

#include <sstream>

namespace matvar {

bool Mat::operator==(const Mat& o) const {
    if (!(field == o.field) || rows != o.rows || cols != o.cols) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == o.a[i])) return false;
    return true;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << rows << 'x' << cols;
    for (const Scalar& s : a) os << ',' << s.str();
    return os.str();
}

Mat rref(Mat m) {
    int lead = 0;
    for (int r = 0; r < m.rows && lead < m.cols; ++r) {
        int i = r;
        while (i < m.rows && m.at(i, lead).is_zero()) ++i;
        if (i == m.rows) {
            --r;
            ++lead;
            continue;
        }
        if (i != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(i, j), m.at(r, j));
        Scalar piv = m.at(r, lead);
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = m.at(r, j) / piv;
        for (int k = 0; k < m.rows; ++k) {
            if (k == r || m.at(k, lead).is_zero()) continue;
            Scalar f = m.at(k, lead);
            for (int j = 0; j < m.cols; ++j) m.at(k, j) = m.at(k, j) - f * m.at(r, j);
        }
        ++lead;
    }
    // drop zero rows
    Mat out(m.field, 0, m.cols);
    for (int r = 0; r < m.rows; ++r) {
        bool zero = true;
        for (int j = 0; j < m.cols; ++j)
            if (!m.at(r, j).is_zero()) {
                zero = false;
                break;
            }
        if (!zero) {
            out.a.insert(out.a.end(), m.a.begin() + r * m.cols, m.a.begin() + (r + 1) * m.cols);
            ++out.rows;
        }
    }
    return out;
}

Mat stack_rows(const Mat& top, const Mat& bottom) {
    Mat out(top.field, top.rows + bottom.rows, top.cols);
    out.a = top.a;
    out.a.insert(out.a.end(), bottom.a.begin(), bottom.a.end());
    return out;
}

Mat from_rows(Field f, const std::vector<std::vector<Scalar>>& rows) {
    int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    Mat out(f, static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) out.at(static_cast<int>(i), j) = rows[i][j];
    return out;
}

int rank_of(const Mat& m) { return rref(m).rows; }

bool reduce_by(const Mat& basis, std::vector<Scalar>& v) {
    for (int r = 0; r < basis.rows; ++r) {
        int piv = 0;
        while (piv < basis.cols && basis.at(r, piv).is_zero()) ++piv;
        if (piv == basis.cols) continue;
        if (v[piv].is_zero()) continue;
        Scalar f = v[piv];
        for (int j = 0; j < basis.cols; ++j) v[j] = v[j] - f * basis.at(r, j);
    }
    for (const Scalar& s : v)
        if (!s.is_zero()) return false;
    return true;
}

bool contains_vector(const Mat& basis, std::vector<Scalar> v) { return reduce_by(basis, v); }

bool row_space_leq(const Mat& a, const Mat& b) {
    for (int r = 0; r < a.rows; ++r) {
        std::vector<Scalar> v(a.a.begin() + r * a.cols, a.a.begin() + (r + 1) * a.cols);
        if (!reduce_by(b, v)) return false;
    }
    return true;
}

Mat intersect_row_spaces(const Mat& a, const Mat& b) {
    // Zassenhaus: reduce [A|A; B|0]; rows with zero left half span the intersection.
    int n = a.cols;
    Mat z(a.field, a.rows + b.rows, 2 * n);
    for (int r = 0; r < a.rows; ++r)
        for (int j = 0; j < n; ++j) z.at(r, j) = z.at(r, j + n) = a.at(r, j);
    for (int r = 0; r < b.rows; ++r)
        for (int j = 0; j < n; ++j) z.at(a.rows + r, j) = b.at(r, j);
    Mat red = rref(std::move(z));
    Mat inter(a.field, 0, n);
    for (int r = 0; r < red.rows; ++r) {
        bool left_zero = true;
        for (int j = 0; j < n; ++j)
            if (!red.at(r, j).is_zero()) {
                left_zero = false;
                break;
            }
        if (left_zero) {
            inter.a.insert(inter.a.end(), red.a.begin() + r * 2 * n + n,
                           red.a.begin() + (r + 1) * 2 * n);
            ++inter.rows;
        }
    }
    return rref(std::move(inter));
}

std::vector<Scalar> coordinates_in(const Mat& basis, std::vector<Scalar> v) {
    std::vector<Scalar> coords;
    coords.reserve(basis.rows);
    for (int r = 0; r < basis.rows; ++r) {
        int piv = 0;
        while (piv < basis.cols && basis.at(r, piv).is_zero()) ++piv;
        coords.push_back(v[piv]);
        Scalar f = v[piv];
        if (!f.is_zero())
            for (int j = 0; j < basis.cols; ++j) v[j] = v[j] - f * basis.at(r, j);
    }
    for (const Scalar& s : v)
        if (!s.is_zero()) throw precondition_error("vector outside subspace");
    return coords;
}

void normalize_projective(std::vector<Scalar>& v) {
    for (const Scalar& s : v) {
        if (!s.is_zero()) {
            Scalar f = s;
            for (Scalar& t : v) t = t / f;
            return;
        }
    }
}

}  // namespace matvar
