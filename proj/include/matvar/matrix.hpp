#pragma once

#include <span>
#include <string>
#include <vector>

#include "matvar/field.hpp"

namespace matvar {

/// Dense exact matrix; row spaces are always kept in unique reduced echelon
/// form, so subspace equality is representation equality.
struct Mat {
    Field field = Field::Q();
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(Field f, int r, int c) : field(f), rows(r), cols(c), a(r * c, Scalar(f)) {}

    Scalar& at(int i, int j) { return a[i * cols + j]; }
    const Scalar& at(int i, int j) const { return a[i * cols + j]; }

    bool operator==(const Mat& o) const;
    std::string str() const;  // canonical, used for ordering and fingerprints
};

/// Reduced row echelon form with zero rows dropped; rows == rank.
Mat rref(Mat m);

Mat stack_rows(const Mat& top, const Mat& bottom);
Mat from_rows(Field f, const std::vector<std::vector<Scalar>>& rows);

int rank_of(const Mat& m);

/// Reduces v by the rows of an rref basis in place; returns true if v lands in
/// the row space (i.e. reduces to zero).
bool reduce_by(const Mat& basis, std::vector<Scalar>& v);

bool contains_vector(const Mat& basis, std::vector<Scalar> v);

/// Row-space containment A <= B; both in rref.
bool row_space_leq(const Mat& a, const Mat& b);

/// Intersection of two row spaces (Zassenhaus), returned in rref.
Mat intersect_row_spaces(const Mat& a, const Mat& b);

/// Coordinates of v in terms of the rows of an rref basis; throws if v is
/// outside the row space.
std::vector<Scalar> coordinates_in(const Mat& basis, std::vector<Scalar> v);

/// Scale so the first nonzero entry is 1 (projective normal form).
void normalize_projective(std::vector<Scalar>& v);

}  // namespace matvar
