# Regenerates catalog.jsonl. sympy is used only to record each group order.
import json
from sympy.combinatorics import Permutation, PermutationGroup

def cyc(n, off=0):
    return [tuple(range(off, off + n))]

def cycles_str(perm_list, degree):
    # perm_list: images list 0-based
    seen=[False]*degree; out=[]
    for i in range(degree):
        if seen[i]: continue
        c=[i]; seen[i]=True; j=perm_list[i]
        while j!=i: c.append(j); seen[j]=True; j=perm_list[j]
        if len(c)>1: out.append("("+" ".join(str(x+1) for x in c)+")")
    return "".join(out) or "()"

def from_cycles(cs, degree):
    img=list(range(degree))
    for c in cs:
        for k in range(len(c)): img[c[k]]=c[(k+1)%len(c)]
    return img

class G:
    def __init__(self, degree, gens): self.degree=degree; self.gens=gens  # gens as image lists

def cyclic(n):
    if n==1: return G(1,[])
    return G(n,[from_cycles(cyc(n),n)])

def dihedral(n):  # order 2n
    if n==2: return G(4,[[1,0,3,2],[2,3,0,1]])
    return G(n,[from_cycles(cyc(n),n),[(n-i)%n for i in range(n)]])

def symmetric(n):
    t=list(range(n)); t[0],t[1]=1,0
    return G(n,[t,from_cycles(cyc(n),n)])

def alternating(n):
    gens=[]
    for k in range(2,n): gens.append(from_cycles([(0,1,k)],n))
    return G(n,gens)

def metacyclic(n,m,t,r):
    # <a,b | a^n, b^m = a^t, b a b^-1 = a^r>, elements a^i b^j, right regular action
    els=[(i,j) for j in range(m) for i in range(n)]
    idx={e:k for k,e in enumerate(els)}
    def mul(x,y):
        i,j=x; k,l=y
        e=i+pow(r,j,n)*k; s=j+l
        if s>=m: s-=m; e+=t
        return (e%n,s)
    gens=[]
    for g in [(1,0),(0,1)]:
        gens.append([idx[mul(x,g)] for x in els])
    return G(len(els),gens)

def affine(p,k):
    root=next(g for g in range(1,p) if len({pow(g,e,p) for e in range(p-1)})==p-1)
    a=pow(root,(p-1)//k,p)
    gens=[from_cycles(cyc(p),p)]
    if k>1: gens.append([x*a%p for x in range(p)])
    return G(p,gens)

def matrix_group(mats):
    q=3
    vecs=[(x,y) for x in range(q) for y in range(q) if (x,y)!=(0,0)]
    idx={v:i for i,v in enumerate(vecs)}
    gens=[]
    for M in mats:
        # row vector action v -> v M
        gens.append([idx[((v[0]*M[0][0]+v[1]*M[1][0])%q,(v[0]*M[0][1]+v[1]*M[1][1])%q)] for v in vecs])
    return G(8,gens)

def product(*gs):
    deg=sum(g.degree for g in gs); gens=[]; off=0
    for g in gs:
        for x in g.gens:
            img=list(range(deg))
            for i,v in enumerate(x): img[off+i]=off+v
            gens.append(img)
        off+=g.degree
    return G(deg,gens)

def wreath_c4_c2():
    return G(8,[from_cycles([(0,1,2,3)],8),from_cycles([(0,4),(1,5),(2,6),(3,7)],8)])

entries=[]
for n in range(1,31): entries.append((f"C{n}",cyclic(n)))
for n in range(2,22): entries.append((f"D{2*n}",dihedral(n)))
C2=cyclic(2); C3=cyclic(3); C4=cyclic(4)
S3=symmetric(3)
entries += [
 ("C2xC2", product(C2,C2)),
 ("C2^3", product(C2,C2,C2)),
 ("C2xC4", product(C2,C4)),
 ("C3xC3", product(C3,C3)),
 ("C2xC6", product(C2,cyclic(6))),
 ("C4xC4", product(C4,C4)),
 ("C2^4", product(C2,C2,C2,C2)),
 ("Q8", metacyclic(4,2,2,3)),
 ("Q16", metacyclic(8,2,4,7)),
 ("SD16", metacyclic(8,2,0,3)),
 ("Dic12", metacyclic(3,4,0,2)),
 ("Q8xC2", product(metacyclic(4,2,2,3),C2)),
 ("D8xC2", product(dihedral(4),C2)),
 ("C4wrC2", wreath_c4_c2()),
 ("A4", alternating(4)),
 ("S4", symmetric(4)),
 ("A5", alternating(5)),
 ("S5", symmetric(5)),
 ("SL(2,3)", matrix_group([[[1,1],[0,1]],[[1,0],[1,1]]])),
 ("GL(2,3)", matrix_group([[[1,1],[0,1]],[[1,0],[1,1]],[[2,0],[0,1]]])),
 ("F5:4", affine(5,4)),
 ("F7:3", affine(7,3)),
 ("F7:6", affine(7,6)),
 ("F11:5", affine(11,5)),
 ("C3xS3", product(C3,S3)),
 ("S3xS3", product(S3,symmetric(3))),
 ("A4xC2", product(alternating(4),C2)),
 ("S4xC2", product(symmetric(4),C2)),
 ("D10xC3", product(dihedral(5),C3)),
 ("A4xC4", product(alternating(4),C4)),
 ("C4xD8", product(C4,dihedral(4))),
 ("D64", dihedral(32)),
 ("C2xC2xS4", product(C2,C2,symmetric(4))),
 ("D128", dihedral(64)),
]
import os
with open(os.path.join(os.path.dirname(os.path.abspath(__file__)),"catalog.jsonl"),"w") as f:
    for name,g in entries:
        gens=[Permutation(x) for x in g.gens] or [Permutation(list(range(g.degree)))]
        order=PermutationGroup(gens).order() if g.gens else 1
        assert order<=128, name
        f.write(json.dumps({"name":name,"degree":g.degree,"generators":[cycles_str(x,g.degree) for x in g.gens],"order":order})+"\n")
        print(name, g.degree, order)
