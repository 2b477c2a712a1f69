#ifndef KINCLUST_KINCLUST_HPP
#define KINCLUST_KINCLUST_HPP

#include "kinclust/scalar.hpp"
#include "kinclust/geometry.hpp"
#include "kinclust/arrangement.hpp"
#include "kinclust/sd_solvers.hpp"
#include "kinclust/md_solvers.hpp"
#include "kinclust/oracle.hpp"
#include "kinclust/io.hpp"

#endif  // KINCLUST_KINCLUST_HPP
