// Walks through the library on a handful of matrices.

#include "theta/theta.hpp"

#include <iomanip>
#include <iostream>

using namespace theta;

int main()
{
    const Mat2 t = Mat2::T();
    const Mat2 s3 = Mat2::S().pow(3);
    const Mat2 m(4, 3, -3, -2);

    std::cout << "multipliers\n";
    for (int level : {3, 4}) {
        for (const Mat2& x : {t, -t, s3, m}) {
            if (!is_member(x, level))
                continue;
            const OracleCheck c = check_transformation(x, level);
            std::cout << "  level " << level << "  (" << std::setw(12) << x.to_string()
                      << ")  nu = " << std::setw(22) << nu(x, level).pretty()
                      << "  oracle " << to_string(c.status);
            if (c.status != OracleStatus::unevaluable)
                std::cout << " residual " << std::scientific << std::setprecision(2) << c.residual
                          << std::defaultfloat;
            std::cout << "\n";
        }
    }

    std::cout << "\nkernel of nu_G^k, k = 3\n";
    const PowerClass pc = PowerClass::make(3, 4);
    std::cout << "  image size " << pc.image_size() << ", coset reps:";
    for (const Mat2& r : kernel_coset_reps(pc))
        std::cout << " (" << r.to_string() << ")";
    std::cout << "\n";

    std::cout << "\ncosets of level 3, index " << index(3) << "\n";
    const Mat2 g(5, 2, 2, 1);
    std::cout << "  (" << g.to_string() << ") lies in the coset of ("
              << coset_reps(3)[coset_rep_of(g, 3)].to_string() << ")\n";

    std::cout << "\ncusp classes\n";
    for (int level : {3, 4}) {
        std::cout << "  level " << level << ":";
        for (const auto& cls : cusp_classes(level))
            std::cout << "  [" << cls.front() << " ~ " << cls.size() - 1 << " others]";
        std::cout << "\n";
    }
}
